"""Multi-slit Young interferometer with quantum sources and the Sorkin parameter."""

__version__ = "0.1.0"

from .detection import detection_curve, detection_probability  # noqa: E402
from .geometry import SlitGeometry, path_length, phase_difference  # noqa: E402
from .sorkin import (  # noqa: E402
    ADJUSTED,
    NAIVE,
    SorkinConfig,
    kappa_curve,
    kappa_identity,
    kappa_physical,
    perturbation_sweep,
)
from .source import (  # noqa: E402
    Coherent,
    Fock,
    SlitConfiguration,
    Thermal,
    correlation_matrix,
    parse_source,
    split_coherent,
    split_mode_relation,
)

__all__ = [
    "ADJUSTED",
    "NAIVE",
    "Coherent",
    "Fock",
    "SlitConfiguration",
    "SlitGeometry",
    "SorkinConfig",
    "Thermal",
    "correlation_matrix",
    "detection_curve",
    "detection_probability",
    "kappa_curve",
    "kappa_identity",
    "kappa_physical",
    "parse_source",
    "path_length",
    "perturbation_sweep",
    "phase_difference",
    "split_coherent",
    "split_mode_relation",
]
