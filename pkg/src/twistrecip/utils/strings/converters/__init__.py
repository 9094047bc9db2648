from .__casing import casing, command_name
