"""Finite-precision p-adic arithmetic, the Tate curve, and lattice calculus."""

from .balls import Ball, ball_next, integer_scale, same_ball
from .dual import DualElement
from .errors import PadicError
from .field import (
    FieldDescriptor,
    PadicElement,
    RVClass,
    ValuationResult,
    arithmetic,
    invert,
    make_field,
    rv_class,
    valuation,
)
from .harness import RunConfig, run_suite
from .lattice import (
    SubgroupLattice,
    atypical,
    dim_image,
    kernel_lattice,
    lemma_vm_bound,
    mult_dependence_mod_kernel,
    persistently_likely,
    relation_search,
    rotund_check,
    smith_normal_form,
)
from .parsing import parse_element
from .series import dual_eval, factorial_valuation, p_exp, p_log
from .tate import (
    TateCurve,
    TatePoint,
    curve_add,
    curve_coefficients,
    curve_neg,
    j_invariant,
    phi,
    reduce_to_fundamental,
    s_k,
    tate_series_point,
    verify_ode,
)
from .weierstrass import (
    StrictSeries,
    gauss_valuation,
    regular_degree,
    weierstrass_divide,
    weierstrass_prepare,
)

__version__ = "0.1.0"
