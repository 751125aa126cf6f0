from models.configuration import VectorConfiguration
from models.graph import GraphKind, HullSignature, SignedGraph
from models.lattice import FaceLattice
from models.sign_system import SignSystem
from models.sign_vector import GroundSet, Sign, SignVector, compose_seq
from models.types import CorpusInstance, EnumerationPolicy, GraphFormat, MutationKind

__all__ = [
    "GroundSet",
    "Sign",
    "SignVector",
    "compose_seq",
    "SignSystem",
    "FaceLattice",
    "GraphKind",
    "SignedGraph",
    "HullSignature",
    "VectorConfiguration",
    "MutationKind",
    "GraphFormat",
    "EnumerationPolicy",
    "CorpusInstance",
]
