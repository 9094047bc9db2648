SNAKE_CASE = 'snake'
PASCAL_CASE = 'pascal'
KEBAB_CASE = 'kebab'
ANY = 'any'
