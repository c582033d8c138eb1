"""Construction and brute-force verification of complementary sequence families."""
from .corrcore import (
    CorrelationValue,
    DimensionError,
    PhaseSequence,
    RangeError,
    SequenceMatrix,
    aacf,
    accf,
    circulant,
    correlation_profile,
    shift_forward,
    shift_right,
    truncate_columns,
)
from .gbf import Gbf, evaluate, quadratic_gcp
from .gcp import ConstructionError, GcpPair, complementary_mate, gcp_for, turyn_compose
from .constructions import (
    CodeSet,
    DoublingVariant,
    ccc_codes,
    circulant_hadamard4,
    czcs_matrix,
    czcss_codes,
    enumerate_chm4,
    gcs_circulant,
    gcs_truncated,
    hadamard_2N,
)
from .verify import (
    GcsClass,
    VerifyReport,
    classify_gcs,
    czcs_max_zone,
    is_ccc,
    is_czcss,
    is_gcp,
    is_gcs,
    is_hadamard,
    is_mate,
)
from .conformance import lemma_conformance

__version__ = "0.1.0"
