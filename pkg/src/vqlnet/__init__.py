"""Virtual-quantum-link network toolkit: ring and sphere topologies,
shortest-path routing, entanglement scheduling and a collision simulator."""

from .errors import (DomainError, InputError, ResourceError, ScheduleError,
                     StructuralError, VQLError)
from .ring import RingTopology, build_ring
from .sphere import SphereTopology, build_icosahedron, build_sphere

__all__ = [
    "DomainError", "InputError", "ResourceError", "ScheduleError",
    "StructuralError", "VQLError", "RingTopology", "SphereTopology",
    "build_icosahedron", "build_ring", "build_sphere",
]
__version__ = "0.1.0"
