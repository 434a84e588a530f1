"""Characters of symmetric groups by rim hooks, cascades and boundary-word recursion."""
from .action import act, act_tableau, orbit, orbits, project, z_vector
from .cascade import (
    Cascade,
    CascadeError,
    crossings,
    enumerate_cascades,
    mn_sum_cascades,
    paths,
    permutation_of,
    render_diagram,
    theta,
    theta_inverse,
    validate,
    weight,
)
from .engine import CharacterTable, ResourceLimitError, character_table, character_value, degree
from .partitions import (
    Partition,
    PartitionError,
    centralizer_order,
    dilate_parts,
    normalize,
    pad_word,
    parse_partition,
    partitions_of,
    shape_of,
    subdivide,
    word,
)
from .rimhook import RimHookTableau, enumerate_tableaux, mn_sum_tableaux, remove_hooks, weight_tableau
from .verify import (
    VerificationReport,
    check_equivalence,
    check_prime_break,
    check_scaled,
    check_subdivided,
    check_vanishing,
)

__version__ = "0.1.0"
