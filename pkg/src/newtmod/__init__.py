"""Newton polytopes of modules over finite-dimensional quiver algebras over F_p."""

from .algebra import AlgebraBasis, FieldSpec, load_algebra, read_algebra
from .bundled import BUNDLED, bundled_algebra
from .enumerate import EnumerationPool, VerificationReport, build_pool, verify_theorem_suite
from .errors import GuardTripped, NotFiniteDimensional, ParseError, TooLarge
from .homological import delta_vector, minimal_presentation, tau
from .modules import Module, decompose, injective, is_brick, is_isomorphic, projective, simple
from .polytope import LatticePolytope, hull_extremes, newton_polytope, polytopes_equal
from .torsion import brick_of_tau_rigid, delta_of_pair, make_pair, semistable_membership

__version__ = "0.1.0"
