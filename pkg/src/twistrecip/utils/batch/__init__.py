from .__asyncio import (
    AsyncoCaseManager,
    CaseSchema,
    CaseResultSchema,
    CaseResultListSchema,
    run_case,
)
