from pydantic import BaseModel


class AbstractBaseSchema(BaseModel):
    pass
