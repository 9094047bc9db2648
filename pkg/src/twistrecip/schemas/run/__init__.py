from .__config import RunConfig, OutputFormat
