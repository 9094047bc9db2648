from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional
from importlib import import_module
import asyncio
import logging
import time

from pydantic import BaseModel

from twistrecip.utils.exceptions import TwistRecipError

logger = logging.getLogger(__name__)


class CaseSchema(BaseModel):
    idx: int
    target: str
    kwargs: dict = {}


class CaseListSchema(BaseModel):
    items: List[CaseSchema] = []


class CaseResultSchema(BaseModel):
    idx: int
    case: CaseSchema
    data: Any = None
    error: Optional[str] = None
    error_code: Optional[str] = None


class CaseResultListSchema(BaseModel):
    items: List[CaseResultSchema] = []
    elapsed_time: Optional[float] = 0


def run_case(target: str, kwargs: dict):
    """Resolve ``package.module:function`` and call it; runs inside a worker process."""
    module_name, function_name = target.split(':')
    function = getattr(import_module(module_name), function_name)
    return function(**kwargs)


class AsyncoCaseManager:
    def __init__(self, workers: int = 1):
        self.__workers: int = max(1, workers)
        self.__cases: CaseListSchema = CaseListSchema(items=[])
        self.__case_id_counter: int = 0
        self.__results: CaseResultListSchema = CaseResultListSchema()
        self.__incomplete_cases: Dict[int, CaseSchema] = {}

    def add_to_cases(self, target: str, kwargs: dict | None = None):
        idx = self.__case_id_counter

        case = CaseSchema(idx=idx, target=target, kwargs=kwargs or {})

        self.__cases.items.append(case)
        self.__incomplete_cases[idx] = case

        self.__case_id_counter += 1
        return idx

    def __add_to_results(self, case: CaseSchema, data=None, error: BaseException | None = None):
        rsp = CaseResultSchema(
            idx=case.idx,
            case=case,
            data=data,
            error=None if error is None else str(error),
            error_code=None if error is None else getattr(error, 'code', type(error).__name__),
        )
        self.__results.items.append(rsp)
        self.__incomplete_cases.pop(case.idx, None)
        return case.idx

    async def __asyncio_case(self, loop, executor, case: CaseSchema):
        try:
            if executor is None:
                data = run_case(case.target, case.kwargs)
            else:
                data = await loop.run_in_executor(executor, run_case, case.target, case.kwargs)
        except TwistRecipError as exc:
            logger.info('case %d (%s) failed: %s', case.idx, case.target, exc)
            self.__add_to_results(case, error=exc)
            return False
        self.__add_to_results(case, data=data)
        return True

    async def __engine(self):
        loop = asyncio.get_running_loop()
        cases = list(self.__incomplete_cases.values())
        if self.__workers == 1:
            for case in cases:
                await self.__asyncio_case(loop, None, case)
            return
        with ProcessPoolExecutor(max_workers=self.__workers) as executor:
            await asyncio.gather(*[self.__asyncio_case(loop, executor, i) for i in cases])

    def start(self):
        start_time = time.perf_counter()
        asyncio.run(self.__engine())
        end_time = time.perf_counter()
        self.__results.elapsed_time = end_time - start_time
        return self

    def export(self):
        _sort_results = self.__results.model_copy()
        _sort_results.items = sorted(self.__results.items, key=lambda item: item.idx)
        return _sort_results
