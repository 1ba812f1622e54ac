"""Classification, losses, expected losses, information gain and bounds."""

from .bounds import BoundInputError, BoundKind, bound_rhs, c1, c1_check, c1_tilde, s_t, theory_report
from .classification import Classification, Side, classify, classify_mean
from .expected import (
    estimate_t_check,
    expected_avg_loss,
    expected_loss_closed_form,
    expected_max_losses,
)
from .info_gain import GREEDY_FACTOR, info_gain_greedy
from .losses import (
    EvalMode,
    LengthMismatchError,
    fscore,
    loss_report,
    loss_point,
    loss_r,
    maxvalue_loss,
    pointwise_losses,
)

__all__ = [
    "BoundInputError",
    "BoundKind",
    "Classification",
    "EvalMode",
    "GREEDY_FACTOR",
    "LengthMismatchError",
    "Side",
    "bound_rhs",
    "c1",
    "c1_check",
    "c1_tilde",
    "classify",
    "classify_mean",
    "estimate_t_check",
    "expected_avg_loss",
    "expected_loss_closed_form",
    "expected_max_losses",
    "fscore",
    "loss_report",
    "info_gain_greedy",
    "loss_point",
    "loss_r",
    "maxvalue_loss",
    "pointwise_losses",
    "s_t",
    "theory_report",
]
