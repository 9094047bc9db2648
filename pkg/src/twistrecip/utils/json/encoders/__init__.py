from .__encoder import Encoder, lossless_digits
