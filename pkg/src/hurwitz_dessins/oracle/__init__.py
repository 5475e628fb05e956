from .cache import OracleCache
from .perm import Perm
from .search import DEFAULT_DEGREE_LIMIT, DegreeLimitError, IncompatibleDatumError, OracleError, enumerate_triples
from .triples import InvalidTripleError, MonodromyTriple, genus_of_triple, orbit_fingerprint
from .weak import BOTH, CONJUGATION_ONLY, MoveSet, OracleCounts, mirror, oracle_counts, relabel_12, relabel_13, relabel_23, weak_hurwitz

__all__ = [
    "BOTH",
    "CONJUGATION_ONLY",
    "DEFAULT_DEGREE_LIMIT",
    "DegreeLimitError",
    "IncompatibleDatumError",
    "InvalidTripleError",
    "MonodromyTriple",
    "MoveSet",
    "OracleCache",
    "OracleCounts",
    "OracleError",
    "Perm",
    "enumerate_triples",
    "genus_of_triple",
    "mirror",
    "oracle_counts",
    "orbit_fingerprint",
    "relabel_12",
    "relabel_13",
    "relabel_23",
    "weak_hurwitz",
]
