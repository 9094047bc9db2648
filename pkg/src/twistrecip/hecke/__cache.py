from pathlib import Path
import logging
import os
import re
import tempfile

from twistrecip.config import SETTINGS
from twistrecip.utils.json import JSON

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
FILE_PATTERN = re.compile(r'^coefficients-k(?P<weight>\d+)-n(?P<count>\d+)\.json$')


def cache_dir() -> Path | None:
    if not SETTINGS.CACHE_DIR:
        return None
    return Path(SETTINGS.CACHE_DIR)


def atomic_write(path: Path, text: str):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f'.{path.name}.', suffix='.tmp')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_coefficients(weight: int, count: int) -> list[int] | None:
    """Smallest cached coefficient file of this weight holding at least ``count`` entries."""
    directory = cache_dir()
    if directory is None or not directory.is_dir():
        return None
    candidates = []
    for path in directory.iterdir():
        match = FILE_PATTERN.match(path.name)
        if match and int(match['weight']) == weight and int(match['count']) >= count:
            candidates.append((int(match['count']), path))
    for _, path in sorted(candidates):
        try:
            data = JSON.loads(path.read_text(encoding='utf-8'))
        except (OSError, ValueError) as exc:
            logger.warning('ignoring unreadable coefficient cache %s: %s', path, exc)
            continue
        if data.get('schema_version') != SCHEMA_VERSION or data.get('weight') != weight:
            continue
        coefficients = [int(c) for c in data['coefficients']]
        if len(coefficients) >= count:
            logger.debug('loaded %d coefficients of weight %d from %s', len(coefficients), weight, path)
            return coefficients
    return None


def store_coefficients(weight: int, coefficients: list[int]):
    directory = cache_dir()
    if directory is None:
        return None
    path = directory / f'coefficients-k{weight}-n{len(coefficients)}.json'
    payload = {
        'schema_version': SCHEMA_VERSION,
        'weight': weight,
        'count': len(coefficients),
        'coefficients': list(coefficients),
    }
    try:
        atomic_write(path, JSON.dumps(payload))
    except OSError as exc:
        logger.warning('could not write coefficient cache %s: %s', path, exc)
        return None
    return path
