"""Verifiers of hypergeometric identities."""
from hypersum.identities.models import IdentityInstance, IdentityReport
from hypersum.identities.proof import (verify_3tr1, verify_3tr2, verify_gosper2_proofpath, verify_lmm1_pointwise,
                                       verify_lmm1_series, verify_lmm2, verify_lmm3)
from hypersum.identities.runner import VerifyConfig, verify_all
from hypersum.identities.theorem import (family_instance, rhs_case1, rhs_case2, rhs_gosper2, verify_algorithm,
                                         verify_binom, verify_case1, verify_case2, verify_gosper2)

__all__ = ['IdentityInstance', 'IdentityReport', 'VerifyConfig', 'family_instance', 'rhs_case1', 'rhs_case2',
           'rhs_gosper2', 'verify_3tr1', 'verify_3tr2', 'verify_algorithm', 'verify_all', 'verify_binom',
           'verify_case1', 'verify_case2', 'verify_gosper2', 'verify_gosper2_proofpath', 'verify_lmm1_pointwise',
           'verify_lmm1_series', 'verify_lmm2', 'verify_lmm3']
