from .core import (SquareMatrix, as_matrix, identity_like, to_json, from_json, spectrum,
                   is_positive_stable, norm, commutes, commutator_norm, matrix_function,
                   matrix_power, principal_power, joint_eigenbasis)
from .family import CommutingFamily, commuting_family
