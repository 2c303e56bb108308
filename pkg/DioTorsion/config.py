import json
from typing import Any, Dict, Optional, Union

import sqlalchemy as sa
from sqlalchemy.engine.url import URL

from .constants import DEFAULT_OPTIONS
from .DBInterface import DBInterface, SQLInterface

__config__: Dict = None
__db_interface__: DBInterface = None
__overrides__: Dict[str, Dict[str, Any]] = {}


def prepare_engine(config: Dict) -> sa.engine.Engine:
    """Create sqlalchemy engine from the ``db_interface`` section of a config dict"""
    driver = config.get('driver', 'sqlite')
    if driver.startswith('sqlite'):
        url = URL.create(drivername=driver, database=config.get('database'))
    else:
        url = URL.create(drivername=driver, host=config.get('host'), port=config.get('port'),
                         database=config.get('database'), username=config.get('username'),
                         password=config.get('password'))
    return sa.create_engine(url)


def generate_db_interface_from_config(config_loc: Union[str, Dict], init: bool = True) -> Optional[DBInterface]:
    if isinstance(config_loc, str):
        with open(config_loc, 'r', encoding='utf-8') as f:
            global_config = json.load(f)
    else:
        global_config = config_loc
    db_config = global_config.get('db_interface', DEFAULT_OPTIONS['db_interface'])
    engine = prepare_engine(db_config)
    return SQLInterface(engine, init=init)


def set_global_config(config_loc: str):
    global __config__, __db_interface__
    with open(config_loc, 'r', encoding='utf-8') as f:
        __config__ = json.load(f)
    __db_interface__ = None


def get_global_config():
    global __config__
    if __config__ is None:
        raise ValueError('Global configuration not set. Please use "set_global_config" to initialize.')
    return __config__


def get_option(section: str, key: str) -> Any:
    """Runtime override, then the loaded config file, then the package default"""
    if key in __overrides__.get(section, {}):
        return __overrides__[section][key]
    if __config__ is not None and key in __config__.get(section, {}):
        return __config__[section][key]
    return DEFAULT_OPTIONS[section][key]


def set_option(section: str, key: str, value: Any) -> None:
    assert section in DEFAULT_OPTIONS, f'unknown config section {section}'
    __overrides__.setdefault(section, {})[key] = value


def reset_options() -> None:
    __overrides__.clear()


def get_db_interface():
    global __db_interface__
    if __db_interface__ is None:
        if __config__ is None:
            __db_interface__ = generate_db_interface_from_config({'db_interface': DEFAULT_OPTIONS['db_interface']})
        else:
            __db_interface__ = generate_db_interface_from_config(get_global_config())
    return __db_interface__
