from .base import AbstractBaseSchema
