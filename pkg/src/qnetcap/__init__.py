"""Cut-based outer bounds and flow-based inner bounds for quantum network rate regions."""

__version__ = "0.1.0"

from .channels import ChannelKind, ChannelModel, weight  # noqa: E402
from .cuts import (  # noqa: E402
    CutValue,
    Functional,
    brute_force_bound,
    multi_edge_bound,
    single_edge_bound,
)
from .errors import (  # noqa: E402
    CapacityError,
    ConstraintError,
    DomainError,
    ParseError,
    QNetCapError,
    SolverError,
    StructuralError,
)
from .flows import Commodity, concurrent_flow, max_flow_rate, max_total_flow, widest_path_rate  # noqa: E402
from .network import Cut, CutConstraint, Edge, EndpointSpec, Network, cutset, enumerate_cuts, validate  # noqa: E402
from .regions import (  # noqa: E402
    RegionReport,
    Scenario,
    ScenarioKind,
    build_region,
    multicast_region,
    multiple_multicast_region,
    unicast_region_multipath,
    unicast_region_singlepath,
)
