import logging
import sys

import ordwqo

FORMAT = '%(asctime)s - %(thread)d - %(filename)s-%(module)s:%(lineno)s - %(levelname)s: %(message)s'
logging.basicConfig(format=FORMAT, stream=sys.stderr)

ordwqo_log = logging.getLogger(f'ordwqo:{ordwqo.__version__}')
ordwqo_log.setLevel(logging.WARNING)


def set_log_level(verbosity: int):
    """Map a count of ``-v`` flags to a level: warnings by default, then suite progress,
    then per-operation detail such as enumeration sizes and timings."""
    levels = [logging.WARNING, logging.INFO, logging.DEBUG]
    ordwqo_log.setLevel(levels[min(max(verbosity, 0), len(levels) - 1)])
