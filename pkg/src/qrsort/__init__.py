"""Instrumented integer sorting: quotient-remainder decomposition sort,
four reference algorithms, a cost-metering model, and a benchmark harness
with CSV/SVG reporting.
"""

from .baselines import (
    ALGORITHM_ORDER,
    DEFAULT_BIN_CAP,
    AlgorithmId,
    counting_sort_value,
    merge_sort,
    quicksort,
    radix_sort_lsd,
)
from .divisor import DivisorStrategy, pass_cost, select_divisor
from .errors import (
    CorrectnessFault,
    CsvFormatError,
    InvalidDivisorError,
    InvalidRangeError,
    KeyRangeError,
    ModeMismatchError,
    QrSortError,
    RangeExceedsMemoryError,
    RangeOverflowError,
)
from .harness import (
    ExperimentConfig,
    RadixBaseRule,
    ResultRecord,
    SweepResult,
    TrialSkip,
    fisher_yates_shuffle,
    generate_array,
    run_sweep,
    run_trial,
)
from .metering import DEFAULT_WEIGHTS, CostLedger, CostWeights
from .reporting import (
    AggregateRow,
    aggregate,
    parse_aggregate_csv,
    parse_raw_csv,
    render_plot,
    write_aggregate_csv,
    write_raw_csv,
)
from .sort_core import (
    GENERAL,
    INT64_MAX,
    INT64_MIN,
    SUBTRACTION_FREE,
    ElementSeq,
    KeySeq,
    QrKeyMode,
    bitwise_mode,
    compute_quotient_keys,
    compute_remainder_keys,
    counting_key_sort,
    counting_key_sorted,
    qr_sort,
    qr_sort_auto,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ALGORITHM_ORDER",
    "DEFAULT_BIN_CAP",
    "DEFAULT_WEIGHTS",
    "GENERAL",
    "INT64_MAX",
    "INT64_MIN",
    "SUBTRACTION_FREE",
    "AggregateRow",
    "AlgorithmId",
    "CorrectnessFault",
    "CostLedger",
    "CostWeights",
    "CsvFormatError",
    "DivisorStrategy",
    "ElementSeq",
    "ExperimentConfig",
    "InvalidDivisorError",
    "InvalidRangeError",
    "KeyRangeError",
    "KeySeq",
    "ModeMismatchError",
    "QrKeyMode",
    "QrSortError",
    "RadixBaseRule",
    "RangeExceedsMemoryError",
    "RangeOverflowError",
    "ResultRecord",
    "SweepResult",
    "TrialSkip",
    "aggregate",
    "bitwise_mode",
    "compute_quotient_keys",
    "compute_remainder_keys",
    "counting_key_sort",
    "counting_key_sorted",
    "counting_sort_value",
    "fisher_yates_shuffle",
    "generate_array",
    "merge_sort",
    "parse_aggregate_csv",
    "parse_raw_csv",
    "pass_cost",
    "qr_sort",
    "qr_sort_auto",
    "quicksort",
    "radix_sort_lsd",
    "render_plot",
    "run_sweep",
    "run_trial",
    "select_divisor",
    "write_aggregate_csv",
    "write_raw_csv",
]
