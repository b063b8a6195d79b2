"""Training-speed-focused classical ML on numpy, with optional compiled kernels.

The public surface re-exported here is the supported API; modules keep
their own namespaces too (quickml.linear, quickml.bench, ...). Kernel
build selection lives in quickml.backend and the QUICKML_BACKEND env var.
"""

from . import backend
from .bench import (
    REPORT_SCHEMA,
    BenchReport,
    compare_reports,
    emit_report,
    load_report,
    run_benchmark,
)
from .cluster import KMeansModel, kmeans_assign, kmeans_fit
from .datasets import (
    TASK_CLASSIFICATION,
    TASK_REGRESSION,
    DatasetSpec,
    generate_synthetic,
    load_csv,
    load_dataset,
    parse_dataset_spec,
    save_csv,
    synthetic_beta,
)
from .errors import (
    AllZeroVariance,
    ClassTooSmall,
    ConstantTarget,
    DegenerateX,
    DegreeZero,
    DivergedToNaN,
    EmptyInput,
    IoError,
    KeyMismatch,
    KOutOfRange,
    KTooLarge,
    KZero,
    LabelsNotPlusMinusOne,
    MissingTargetColumn,
    MoreThanTwoClasses,
    NoConvergence,
    NonBinaryLabels,
    NonFiniteData,
    NonNumericCell,
    NotSymmetric,
    QuickMLError,
    RatioOutOfRange,
    ShapeMismatch,
    SingleClass,
    SingularMatrix,
    SpecInvalid,
    TooFewRows,
    TooManyComponents,
)
from .linalg import solve_linear_system, symmetric_eigen
from .linear import (
    FittedLinearModel,
    PolynomialModel,
    SimpleLinearModel,
    fit_multiple,
    fit_polynomial,
    fit_simple,
    predict_linear,
    predict_polynomial,
    predict_simple,
)
from .logistic import logistic_fit, logistic_predict, logistic_predict_proba, sigmoid
from .metrics import (
    ClassificationReport,
    ConfusionMatrix,
    RegressionReport,
    classification_metrics,
    confusion,
    regression_metrics,
)
from .naive_bayes import ClassStatistics, nb_fit, nb_log_scores, nb_predict
from .neighbors import KnnModel, knn_fit, knn_predict
from .optim import GradientModelState, OptimizerConfig, SvmConfig, momentum_step
from .pca import (
    PcaModel,
    components_for_variance,
    explained_variance_ratio,
    pca_fit,
    pca_inverse_transform,
    pca_transform,
)
from .preprocessing import (
    MinMaxScalerState,
    SplitResult,
    StandardScalerState,
    min_max_apply,
    min_max_fit_transform,
    min_max_inverse,
    polynomial_features,
    standard_apply,
    standard_fit_transform,
    train_val_split,
)
from .rng import Rng, shuffled_indices
from .svm import svm_fit, svm_predict

__version__ = "0.1.0"
