import os
from functools import lru_cache

from pydantic import BaseModel as Base

CACHE_DIR_ENV = 'TWISTRECIP_CACHE_DIR'


class QuadratureObject(Base):
    MAX_HEIGHT: float = 4000.0
    START_DEGREE: int = 2
    MAX_DEGREE: int = 6
    DIGITS: int = 20


class CharactersObject(Base):
    MAX_MODULUS: int = 101


class TwistRecip(Base):
    GUARD_DIGITS: int = 20
    DEFAULT_DIGITS: int = 30
    TRUNCATION_DIGITS: int = 15
    CACHE_DIR: str | None = None
    WORKERS: int = 1
    RESULT_CACHE_SIZE: int = 64
    QUADRATURE: QuadratureObject = QuadratureObject()
    CHARACTERS: CharactersObject = CharactersObject()


@lru_cache()
def __get_settings():
    input_conf = {}

    cache_dir = os.environ.get(CACHE_DIR_ENV)
    if cache_dir:
        input_conf['CACHE_DIR'] = cache_dir

    return TwistRecip(**input_conf)


SETTINGS = __get_settings()
