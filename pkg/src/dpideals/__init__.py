"""Generating sets for De Concini-Procesi ideals I_lambda: constructions,
reductions, and exact graded verification of minimal generator counts."""

from .partition import (
    Partition,
    Filling,
    TopCellData,
    WeymanDiagram,
    antidiagonal_filling,
    conjectured_cells,
    partitions_of,
    regular_filling,
    top_cells,
    weyman_cardinalities,
    weyman_diagram,
)
from .polyring import Polynomial, e_poly, h_poly, m_poly
from .gensets import (
    AlgorithmState,
    GeneratorSet,
    LabeledGenerator,
    algorithm_g,
    column_elimination,
    count_table,
    family_set,
    first_reduction,
    principal_reduction,
    reading_process,
    tanisaki,
)
from .verify import (
    BudgetError,
    ConjectureVerdict,
    EqualityReport,
    GradedReport,
    betti_counts,
    check_conjecture,
    counterexample_family_member,
    ideal_equal,
    membership,
    rank,
    scan,
    span_matrix,
)

__version__ = "0.1.0"
