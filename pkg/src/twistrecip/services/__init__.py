from .__base import BaseVerification, VerificationConfig, cached_result_count
from .__verifications import (
    ReportVerification,
    Theorem1Verification,
    CorollaryVerification,
    LemmaVerification,
    OrthogonalityVerification,
    FunctionalEquationVerification,
    AdditiveReciprocityVerification,
    TransformVerification,
    theorem1_case,
    corollary_case,
    lemma_case,
)
