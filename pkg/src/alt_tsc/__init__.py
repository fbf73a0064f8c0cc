"""Law-based shapelet features for time series classification."""

import warnings

warnings.filterwarnings("ignore", message=".*TBB threading layer.*")

from .dataset import (  # noqa: E402
    TimeSeriesDataset, SplitSpec, CsvSchema, ParseError, SplitError,
    parse_ts, load_ts, parse_csv, export_csv, stratified_split,
)
from .linlaw import hankel_embed, symmetric_eigen, shapelet_vector, shapelet_vectors  # noqa: E402
from .shapelet_bank import WindowConfig, ShapeletMatrix, validate_config, extract_sequences, build_bank  # noqa: E402
from .transform import embed_instance, apply_bank, square_partition  # noqa: E402
from .features import ExtractionMethod, row_reduce, aggregate, featurize  # noqa: E402
from .classify import knn_predict, linear_margin_fit, cross_validate, evaluate  # noqa: E402

__version__ = "0.1.0"
