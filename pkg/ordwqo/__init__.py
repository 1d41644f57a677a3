"""ordwqo version"""
__version__ = "0.1.0"

from ordwqo.config import Config
from ordwqo.core import Workbench
from ordwqo.core import workbench
from ordwqo.ordering import Ordering
