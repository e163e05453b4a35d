"""Edge weights for the physical channels of a network.

Every weight is expressed in bits per channel use.  For the four named
channel families the weight is the two-way capacity, which coincides with
the relative entropy of entanglement of the channel's Choi state.
"""

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

# Transmissivities are clipped to [ETA_MIN, 1 - ETA_MIN]; -log2(1 - eta) diverges at 1.
ETA_MIN = 1e-12


class ChannelKind(enum.Enum):
    PURE_LOSS = "pure_loss"
    ERASURE = "erasure"
    DEPHASING = "dephasing"
    AMPLIFIER = "amplifier"
    CUSTOM = "custom"


DISTILLABLE_KINDS = frozenset(
    {ChannelKind.PURE_LOSS, ChannelKind.ERASURE, ChannelKind.DEPHASING, ChannelKind.AMPLIFIER}
)


def binary_entropy(p):
    if p <= 0.0 or p >= 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


@dataclass(frozen=True)
class ChannelModel:
    """A channel kind and its single real parameter.

    ``param`` is the transmissivity for pure loss, the erasure or dephasing
    probability, the gain of a quantum-limited amplifier, or the weight
    itself for ``custom``.  ``distillable`` is forced to True for the named
    kinds and left to the caller for custom edges.
    """

    kind: ChannelKind
    param: float
    distillable: bool = True

    def __post_init__(self):
        kind = self.kind
        if not isinstance(kind, ChannelKind):
            try:
                kind = ChannelKind(kind)
            except ValueError:
                raise DomainError(f"unknown channel kind {kind!r}", field="kind") from None
            object.__setattr__(self, "kind", kind)
        try:
            param = float(self.param)
        except (TypeError, ValueError):
            raise DomainError(f"param must be a real number, got {self.param!r}", field="param") from None
        object.__setattr__(self, "param", param)
        _check_domain(kind, param)
        if kind in DISTILLABLE_KINDS:
            object.__setattr__(self, "distillable", True)

    @property
    def capped(self):
        """True when a pure-loss transmissivity was clipped to keep the weight finite."""
        if self.kind is not ChannelKind.PURE_LOSS:
            return False
        return self.param < ETA_MIN or self.param > 1.0 - ETA_MIN

    @property
    def weight(self):
        return weight(self)

    @classmethod
    def pure_loss(cls, eta):
        return cls(ChannelKind.PURE_LOSS, eta)

    @classmethod
    def erasure(cls, p):
        return cls(ChannelKind.ERASURE, p)

    @classmethod
    def dephasing(cls, p):
        return cls(ChannelKind.DEPHASING, p)

    @classmethod
    def amplifier(cls, gain):
        return cls(ChannelKind.AMPLIFIER, gain)

    @classmethod
    def custom(cls, value, distillable=False):
        return cls(ChannelKind.CUSTOM, value, distillable)


def _check_domain(kind, x):
    if math.isnan(x):
        raise DomainError(f"{kind.value} param is NaN", field="param")
    if kind is ChannelKind.PURE_LOSS:
        ok = 0.0 < x < 1.0
        need = "transmissivity eta in (0, 1)"
    elif kind in (ChannelKind.ERASURE, ChannelKind.DEPHASING):
        ok = 0.0 <= x <= 1.0
        need = "probability p in [0, 1]"
    elif kind is ChannelKind.AMPLIFIER:
        ok = 1.0 < x < math.inf
        need = "gain g > 1"
    else:
        ok = 0.0 <= x < math.inf
        need = "finite weight v >= 0"
    if not ok:
        raise DomainError(f"{kind.value} param={x!r} out of domain: need {need}", field="param")


def weight(model):
    """Entanglement weight of ``model`` in bits per use."""
    kind, x = model.kind, model.param
    if kind is ChannelKind.PURE_LOSS:
        eta = min(max(x, ETA_MIN), 1.0 - ETA_MIN)
        return -math.log2(1.0 - eta)
    if kind is ChannelKind.ERASURE:
        return 1.0 - x
    if kind is ChannelKind.DEPHASING:
        return 1.0 - binary_entropy(x)
    if kind is ChannelKind.AMPLIFIER:
        return math.log2(x / (x - 1.0))
    return x
