from abc import abstractmethod
from collections import OrderedDict
import logging
import threading

from pydantic import BaseModel

from twistrecip.config import SETTINGS
from twistrecip.schemas.reports import CheckResult

logger = logging.getLogger(__name__)

__lock = threading.Lock()
# least recently used first
__results: OrderedDict = OrderedDict()


def _cache_get(key):
    with __lock:
        value = __results.get(key)
        if value is not None:
            __results.move_to_end(key)
        return value


def _cache_set(key, value):
    with __lock:
        __results[key] = value
        __results.move_to_end(key)
        while len(__results) > SETTINGS.RESULT_CACHE_SIZE:
            evicted, _ = __results.popitem(last=False)
            logger.debug('result cache full; dropping %s', evicted)


def cached_result_count() -> int:
    with __lock:
        return len(__results)


class VerificationConfig(BaseModel):
    name: str | None = None
    cache: bool | None = None
    cache_unique_key: str | tuple | list | None = None


class BaseVerification:
    """
    - Config:
        - type:
            - class

        - attrs:
            - name:
                - type:
                    - str
                - descriptions:
                    - Label printed in front of every check of this verification.

            - cache:
                - type:
                    - bool
                - descriptions:
                    - Keep the check results of this process and return them again for
                    identical inputs. The default mode is disabled.

            - cache_key:
                - type:
                    - str or tuple or list
                - descriptions:
                    - Attribute names whose values make up the cache key.
    """

    def __init__(self, *args, **kwargs):
        self.__input_config: VerificationConfig = VerificationConfig(**kwargs)

    def execute(self, reset_cache=False) -> list[CheckResult]:
        if not self.cache:
            return self.service_output_handler()

        key = self.cache_unique_key()
        output = None if reset_cache else _cache_get(key)
        if output is None:
            output = self.service_output_handler()
            _cache_set(key, output)
        else:
            logger.debug('%s: cached results for %s', self.name, key)
        return output

    @abstractmethod
    def service_output_handler(self) -> list[CheckResult]:
        pass

    @property
    def name(self) -> str:
        if self.__input_config.name is not None:
            return self.__input_config.name

        if (
            hasattr(self, 'Config') and
            hasattr(self.Config, 'name') and
            isinstance(self.Config.name, str)
        ):
            return self.Config.name

        return type(self).__name__

    @property
    def cache(self) -> bool:
        if self.__input_config.cache is not None:
            return self.__input_config.cache

        if (
            hasattr(self, 'Config') and
            hasattr(self.Config, 'cache') and
            isinstance(self.Config.cache, bool)
        ):
            return self.Config.cache

        return False

    def cache_unique_key(self):
        if self.__input_config.cache_unique_key is not None:
            return self.__input_config.cache_unique_key

        keys = []
        if hasattr(self, 'Config') and hasattr(self.Config, 'cache_key'):
            if isinstance(self.Config.cache_key, str):
                keys = [self.Config.cache_key]
            elif isinstance(self.Config.cache_key, (tuple, list, set)):
                keys = list(self.Config.cache_key)

        return (type(self).__name__,) + tuple(
            repr(getattr(self, i)) if hasattr(self, i) else i.upper() for i in keys
        )
