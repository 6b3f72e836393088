"""Design-World: two attention-limited agents negotiate a two-room floor plan.

Discourse strategies differ in whether proposals carry their warrant (the
option's score); batch experiments measure how that interacts with memory
radius and processing costs.
"""

from .acts import Close, Open, Propose, Reject, Say, parse_act, render_act
from .agent import Agent
from .awm import Locus, MemoryStore, Proposition, sphere
from .costs import CostParams, performance
from .dialogue import Transcript, infer_implicit_acceptance, run_dialogue, simulate
from .domain import DesignState, Option, Task, apply_acceptance, generate_task, options_for, raw_score
from .experiment import RunRecord, classify, compare, mean_difference_series, recost, run_batch
from .planop import AccessibilityMatrix, fit_matrix, instantiate_motivation, not_accessible
from .stats import ks_two_sample
from .strategies import ALL_IMPLICIT, CONDITIONAL_WARRANT, EXPLICIT_WARRANT, expand_proposal

__version__ = "0.1.0"
