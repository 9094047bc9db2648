from .__verification import VerificationReport, ReportInputs, ReportTerm, SCHEMA_VERSION
from .__check import CheckResult
