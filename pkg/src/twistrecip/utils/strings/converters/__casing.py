from twistrecip.utils.strings.casings import (
    SNAKE_CASE,
    PASCAL_CASE,
    KEBAB_CASE,
    ANY,
)


def casing(value: str, from_case: str = ANY, to_case: str = SNAKE_CASE):
    if not value:
        return value

    match from_case.lower():
        case 'any':
            words = a2w(value)
        case 'snake':
            words = value.split('_')
        case 'kebab':
            words = value.split('-')
        case 'pascal':
            words = a2w(value)
        case _:
            return value

    match to_case:
        case 'snake':
            rslt = '_'.join(words)
        case 'kebab':
            rslt = '-'.join(words)
        case 'pascal':
            rslt = ''.join(w[:1].upper() + w[1:] for w in words)
        case _:
            rslt = value
    return rslt


def a2w(value: str):
    """Split any casing into lower-case words; digits stay glued to the word before them."""
    words = []
    current = ''
    for c in value:
        if c in '_- ':
            if current:
                words.append(current)
            current = ''
            continue
        if c.isupper() and current:
            words.append(current)
            current = ''
        current += c.lower()
    if current:
        words.append(current)
    return words


def command_name(class_name: str, suffix: str = 'Command') -> str:
    if class_name.endswith(suffix):
        class_name = class_name[:-len(suffix)]
    return casing(class_name, PASCAL_CASE, KEBAB_CASE)
