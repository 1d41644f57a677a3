from typing import Any, Dict, Optional

from ordwqo.config import Config
from ordwqo.report import Report
from ordwqo.utils import import_ruamel
from ordwqo.utils.error import ParamError, ParseError, wrap_error


class Workbench:
    """ordwqo core object, holding the configuration and the report of the suites run so far.

    Example:
        .. code-block:: python

            from ordwqo import workbench, Config

            workbench.init(config=Config(random_cases=1000))
    """

    def __init__(self):
        self.has_init = False
        self.config = Config()
        self.report = Report()

    def init(self, config: Optional[Config] = None):
        """Pass parameters to initialize the workbench.

        :param config: a module to pass configurations, defaults to ``Config()``
        """
        self.has_init = True
        self.config = config if config is not None else Config()
        self.report = Report()

    def init_from_config(self, config_path: Optional[str]) -> Dict[str, Any]:
        """Initialize the workbench from a YAML file, see ``ordwqo_config_template.yml``.

        :param config_path: the path of the YAML file, an empty value keeps the defaults.
        :return: the loaded YAML mapping.
        """
        init_conf = load_config_file(config_path)
        config_kws = init_conf.get("config", {}) or {}
        try:
            config = Config(**config_kws)
        except TypeError as e:
            raise ParamError(f"unknown config key in {config_path}: {e}") from e
        self.init(config)
        return init_conf


def load_config_file(config_path: Optional[str]) -> Dict[str, Any]:
    if not config_path:
        return {}
    import_ruamel()
    from ruamel.yaml import YAML  # pylint: disable=C0415
    from ruamel.yaml.error import YAMLError  # pylint: disable=C0415

    with open(config_path, "r", encoding="utf-8") as f:
        yaml = YAML(typ="safe", pure=True)
        try:
            init_conf = yaml.load(f)
        except YAMLError as e:
            raise wrap_error(e, ParseError)
    return init_conf or {}


workbench = Workbench()
