"""Exact face classification of coadjoint orbitopes.

For a compact semisimple group given by root data and a chamber point x, the
package classifies the faces of conv(K.x) up to conjugation by x-connected
subsets of simple roots, verifies the classification against brute-force
exact convex geometry on the Kostant polytope, and cross-checks it
numerically on su(n) matrix orbits.
"""

from .errors import (CapExceededError, InvalidInputError, OrbitopeError,
                     TheoremViolationError)
from .faces import (FaceClassification, FaceDescriptor, classify_faces,
                    parabolic_report, phi_of_descriptor, psi_of_polytope_face,
                    saturate, x_connected_subsets)
from .integrality import (FaceWeight, WeightData, check_integral,
                          full_weight_data, induce_face_weight)
from .numeric import (AscentResult, HessianReport, MatrixOrbitPoint, ascend,
                      hessian_signature, matrix_orbit_point, verify_face_numeric)
from .polytope import (ExactPolytope, FaceOrbit, Facet, PolytopeFace,
                       act_on_faces, face_stabilizer, fixed_vector_in_cone,
                       hull, support_set)
from .roots import (ChamberPoint, RootSystem, build_root_system,
                    chamber_point, killing_pairing)
from .strata import StratumDims, StratumPoset, build_poset, stratum_dim
from .weyl import WeylElement, WeylGroup, build_weyl_group, weyl_orbit

__version__ = "0.1.0"

__all__ = [
    "AscentResult", "CapExceededError", "ChamberPoint", "ExactPolytope",
    "FaceClassification", "FaceDescriptor", "FaceOrbit", "FaceWeight", "Facet",
    "HessianReport", "InvalidInputError", "MatrixOrbitPoint", "OrbitopeError",
    "PolytopeFace", "RootSystem", "StratumDims", "StratumPoset",
    "TheoremViolationError", "WeightData", "WeylElement", "WeylGroup",
    "act_on_faces", "ascend", "build_poset", "build_root_system",
    "build_weyl_group", "chamber_point", "check_integral", "classify_faces",
    "face_stabilizer", "fixed_vector_in_cone", "full_weight_data",
    "hessian_signature", "hull",
    "induce_face_weight", "killing_pairing", "matrix_orbit_point", "parabolic_report",
    "phi_of_descriptor", "psi_of_polytope_face", "saturate", "stratum_dim",
    "support_set", "verify_face_numeric", "weyl_orbit", "x_connected_subsets",
]
