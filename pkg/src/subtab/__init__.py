"""Tables over the immediate-sublist lattice.

Binomial-shaped trees index one value per k-element sublist of a source
sequence; `retabulate` raises such a table one level, and `td`/`bu` drive
sublist-induction solvers over the lattice top-down or bottom-up.
"""

from .bintree import (
    Bin,
    NotATip,
    ParseError,
    ShapeMismatch,
    TipS,
    TipZ,
    Tree,
    UNIT,
    decode,
    encode,
    flatten,
    is_tree,
    map_tree,
    render_ascii,
    size,
    un_tip,
    validate_shape,
    zip_with,
)
from .induction import (
    CallStats,
    Overflow,
    Solver,
    bu,
    bu_call_count,
    nesting_depth,
    run_instrumented,
    solver_from_singleton_base,
    td,
    td_call_count,
)
from .problems import (
    PROBLEMS,
    Problem,
    SizeLimit,
    brute_force_removal_oracle,
    digest_problem,
    get_problem,
    min_removal_problem,
    subtree_count,
    subtree_count_problem,
)
from .tabulate import (
    EmptyInput,
    InvalidLevel,
    KeyedTable,
    Shape,
    ShapeError,
    blank,
    cd_classic,
    check_rotation,
    check_spec_equation,
    choose,
    cons_table,
    immediate_sublists,
    retabulate,
)

__version__ = "0.1.0"
