"""Dinic max-flow on undirected capacitated graphs."""

from collections import deque

# Residual capacities at or below this are treated as saturated.
EPS = 1e-12


class FlowGraph:
    def __init__(self, n):
        self.n = n
        self.head = [[] for _ in range(n)]
        self.to = []
        self.cap = []

    def add_arc_pair(self, u, v, cap_uv, cap_vu):
        """Add arcs u->v and v->u as mutual residuals; return the index of u->v."""
        k = len(self.to)
        self.to += [v, u]
        self.cap += [cap_uv, cap_vu]
        self.head[u].append(k)
        self.head[v].append(k + 1)
        return k

    def _levels(self, s, t):
        level = [-1] * self.n
        level[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for k in self.head[x]:
                y = self.to[k]
                if level[y] < 0 and self.cap[k] > EPS:
                    level[y] = level[x] + 1
                    q.append(y)
        return level if level[t] >= 0 else None

    def max_flow(self, s, t):
        total = 0.0
        while True:
            level = self._levels(s, t)
            if level is None:
                return total
            it = [0] * self.n
            while True:
                pushed = self._push(s, t, float("inf"), level, it)
                if pushed <= EPS:
                    break
                total += pushed

    def _push(self, s, t, limit, level, it):
        # iterative DFS along the level graph
        path = []
        x = s
        while True:
            if x == t:
                f = limit
                for k in path:
                    f = min(f, self.cap[k])
                for k in path:
                    self.cap[k] -= f
                    self.cap[k ^ 1] += f
                return f
            advanced = False
            while it[x] < len(self.head[x]):
                k = self.head[x][it[x]]
                y = self.to[k]
                if self.cap[k] > EPS and level[y] == level[x] + 1:
                    path.append(k)
                    x = y
                    advanced = True
                    break
                it[x] += 1
            if not advanced:
                if not path:
                    return 0.0
                level[x] = -1
                k = path.pop()
                x = self.to[k ^ 1]
                it[x] += 1

    def reachable(self, s):
        seen = [False] * self.n
        seen[s] = True
        q = deque([s])
        while q:
            x = q.popleft()
            for k in self.head[x]:
                y = self.to[k]
                if not seen[y] and self.cap[k] > EPS:
                    seen[y] = True
                    q.append(y)
        return seen
