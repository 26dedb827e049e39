"""Two-qutrit states under uniform acceleration and noise."""

from qacc._core import (
    CSV_HEADER,
    DensityMatrix,
    KrausChannel,
    __version__,
    accelerate,
    amplitude_damping_kraus,
    apply_global,
    apply_multilocal,
    ccnr_value,
    classify,
    concurrence,
    crosscheck,
    dephasing_kraus,
    extend_to_acc_space,
    hermitian_eigenvalues,
    horodecki_state,
    is_ppt,
    kron,
    max_entangled,
    nonlocal_information,
    partial_trace,
    partial_transpose,
    realign,
    rel_entropy_coherence,
    rindler_isometry,
    trace_norm,
    write_figure,
)

__all__ = [
    "CSV_HEADER",
    "DensityMatrix",
    "KrausChannel",
    "__version__",
    "accelerate",
    "amplitude_damping_kraus",
    "apply_global",
    "apply_multilocal",
    "ccnr_value",
    "classify",
    "concurrence",
    "crosscheck",
    "dephasing_kraus",
    "extend_to_acc_space",
    "hermitian_eigenvalues",
    "horodecki_state",
    "is_ppt",
    "kron",
    "max_entangled",
    "nonlocal_information",
    "partial_trace",
    "partial_transpose",
    "realign",
    "rel_entropy_coherence",
    "rindler_isometry",
    "trace_norm",
    "write_figure",
]
