import dataclasses
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from Utilities.GenericUtils.env_utils import get_prefixed_overrides
from Utilities.GenericUtils.file_op_utils import read_yaml
from Utilities.ReportUtils.logger import get_logger

logger = get_logger()

DEFAULT_CONFIG_FILE = Path(__file__).resolve().parents[2] / "config.yaml"


@dataclass(frozen=True)
class WorkbenchSettings:
    """Flat view of config.yaml; every cap and budget the workbench reads."""

    log_level: str = "INFO"
    threads: int = 1
    seed: int = 20240917
    element_cap: int = 250_000
    vertex_cap: int = 5_000
    mis_cap: int = 1_000_000
    solver_node_budget: int = 50_000_000
    is_primitivity_budget: int = 2_000_000
    search_budget: int = 600_000
    search_max_order: Optional[int] = 48
    search_cache_path: str = "./results/search_cache.json"
    report_json_path: str = "./reports/verification_report.json"
    report_csv_path: str = "./reports/verification_report.csv"
    report_html_path: str = "./reports/verification_report.html"
    conjecture_path: str = "./reports/wreath_density_conjecture.json"
    extended: bool = False
    product_order_limit: int = 2000
    density_order_limit: int = 150
    density_node_budget: int = 2_000_000
    wreath_order_limit: int = 100
    wreath_density_limit: int = 200
    square_vertex_limit: int = 8
    toolbox_vertex_limit: int = 100
    internal_square_limit: int = 64
    random_pairs: int = 100_000
    random_formula_pairs: int = 10_000


# config.yaml section -> {yaml key: settings field}
_SECTION_KEYS: Dict[str, Dict[str, str]] = {
    "limits": {
        "element_cap": "element_cap",
        "vertex_cap": "vertex_cap",
        "mis_cap": "mis_cap",
        "solver_node_budget": "solver_node_budget",
        "is_primitivity_budget": "is_primitivity_budget",
    },
    "search": {"budget": "search_budget", "max_order": "search_max_order", "cache_path": "search_cache_path"},
    "report": {
        "json_path": "report_json_path",
        "csv_path": "report_csv_path",
        "html_path": "report_html_path",
        "conjecture_path": "conjecture_path",
    },
    "checks": {
        "extended": "extended",
        "product_order_limit": "product_order_limit",
        "density_order_limit": "density_order_limit",
        "density_node_budget": "density_node_budget",
        "wreath_order_limit": "wreath_order_limit",
        "wreath_density_limit": "wreath_density_limit",
        "square_vertex_limit": "square_vertex_limit",
        "toolbox_vertex_limit": "toolbox_vertex_limit",
        "internal_square_limit": "internal_square_limit",
        "random_pairs": "random_pairs",
        "random_formula_pairs": "random_formula_pairs",
    },
}


def _coerce(field: dataclasses.Field, value: Any) -> Any:
    if value is None:
        return None
    default = field.default
    if isinstance(default, bool):
        if isinstance(value, str):
            return value.strip().lower() in ("1", "true", "yes", "on")
        return bool(value)
    if isinstance(default, int) or field.name == "search_max_order":
        return int(value)
    return str(value)


class SettingsUtil:
    """
    SettingsUtil class for reading workbench settings from config.yaml.
    Environment variables ``EKR_<FIELD>`` (optionally from a .env file) override file values.
    """

    config_file: Path

    def __init__(self, config_file=None):
        self.config_file = Path(config_file) if config_file else DEFAULT_CONFIG_FILE

    def get_settings(self) -> WorkbenchSettings:
        values: Dict[str, Any] = {}
        if self.config_file.exists():
            logger.debug(f"Reading settings from file: {self.config_file}")
            raw = read_yaml(str(self.config_file)) or {}
            for key in ("log_level", "threads", "seed"):
                if key in raw:
                    values[key] = raw[key]
            for section, mapping in _SECTION_KEYS.items():
                for yaml_key, field_name in mapping.items():
                    if yaml_key in (raw.get(section) or {}):
                        values[field_name] = raw[section][yaml_key]
        else:
            logger.warning(f"Settings file {self.config_file} not found, using defaults")

        load_dotenv()
        fields = {field.name: field for field in dataclasses.fields(WorkbenchSettings)}
        for key, value in get_prefixed_overrides().items():
            if key in fields:
                values[key] = value

        coerced = {name: _coerce(fields[name], value) for name, value in values.items() if name in fields}
        settings = WorkbenchSettings(**coerced)
        logger.debug(f"Settings resolved: {settings}")
        return settings


_settings: Optional[WorkbenchSettings] = None


def get_settings() -> WorkbenchSettings:
    """Process-wide settings, loaded lazily from the default config file."""
    global _settings
    if _settings is None:
        _settings = SettingsUtil().get_settings()
    return _settings


def set_settings(settings: WorkbenchSettings) -> None:
    global _settings
    _settings = settings


def override_settings(base: Optional[WorkbenchSettings] = None, **changes: Any) -> WorkbenchSettings:
    """Return a copy of ``base`` (or the global settings) with non-None ``changes`` applied."""
    source = base if base is not None else get_settings()
    return dataclasses.replace(source, **{key: value for key, value in changes.items() if value is not None})
