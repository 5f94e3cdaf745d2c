"""Multi-criteria decision analysis toolkit.

Decision-matrix ingestion, criterion weighting (standard deviation,
entropy, AHP, equal, manual), TOPSIS ranking with benefit/cost criteria,
weight-sensitivity and rank-reversal analysis, deterministic reporting,
and a reproduction harness for the bundled job-satisfaction study data.
"""

from .errors import McdmError
from .ingest import (
    Statistic,
    SurveyResponse,
    aggregate_survey,
    parse_matrix_csv,
    parse_survey_csv,
    serialize_matrix_csv,
)
from .model import (
    Criterion,
    DecisionMatrix,
    Direction,
    TopsisResult,
    TopsisRow,
    WeightVector,
    new_matrix,
    transpose,
)
from .sensitivity import leave_one_out, perturb_weights, rank_stability
from .topsis import topsis_rank
from .weighting import (
    AhpOutcome,
    Basis,
    PairwiseMatrix,
    ahp_weights,
    entropy_weights,
    equal_weights,
    manual_weights,
    std_dev_weights,
)

__all__ = [
    "AhpOutcome",
    "Basis",
    "Criterion",
    "DecisionMatrix",
    "Direction",
    "McdmError",
    "PairwiseMatrix",
    "Statistic",
    "SurveyResponse",
    "TopsisResult",
    "TopsisRow",
    "WeightVector",
    "aggregate_survey",
    "ahp_weights",
    "entropy_weights",
    "equal_weights",
    "leave_one_out",
    "manual_weights",
    "new_matrix",
    "parse_matrix_csv",
    "parse_survey_csv",
    "perturb_weights",
    "rank_stability",
    "serialize_matrix_csv",
    "std_dev_weights",
    "topsis_rank",
    "transpose",
]

__version__ = "0.1.0"
