from .__json import JSON
from .encoders import Encoder, lossless_digits
