import datetime as dt
import logging
import time
from typing import List, Mapping, Optional, Sequence, Union

import pandas as pd
import sqlalchemy as sa
from sqlalchemy import BigInteger, Boolean, Column, DateTime, Integer, Table, Text, VARCHAR

from . import utils
from .constants import RECORD_TABLE, REPORT_TABLE


class DBInterface(object):
    """Database Interface Base Class"""

    def __init__(self):
        pass

    def create_table(self, table_name: str, table_info: Mapping[str, str]) -> None:
        """Create table named ``table_name`` with column name and type specified in ``table_info``"""
        raise NotImplementedError()

    def drop_all_tables(self) -> None:
        """[CAUTION] Drop *ALL TABLES AND THEIR DATA* in the database"""
        raise NotImplementedError()

    def purge_table(self, table_name: str) -> None:
        """[CAUTION] Drop *ALL DATA* in the table"""
        raise NotImplementedError()

    def insert_df(self, df: pd.DataFrame, table_name: str) -> None:
        """Insert pandas.DataFrame(df) into table ``table_name``"""
        raise NotImplementedError()

    def read_table(self, table_name: str, columns: Sequence[str] = None, **kwargs) -> pd.DataFrame:
        """Read data from ``table_name``"""
        raise NotImplementedError()

    def exist_table(self, table_name: str) -> bool:
        """Check if ``table_name`` exists in the database"""
        raise NotImplementedError()

    def get_columns_names(self, table_name: str) -> List[str]:
        """Get column names of a table"""
        raise NotImplementedError()

    def get_table_primary_keys(self, table_name: str) -> Optional[List[str]]:
        """Get primary keys of a table"""
        raise NotImplementedError()

    def get_table_names(self) -> List[str]:
        """List ALL tables in the database"""
        raise NotImplementedError()

    def delete_id_records(self, table_name: str, ids: Union[str, Sequence[str]]) -> None:
        """Delete rows whose ``id`` is in ``ids``"""
        raise NotImplementedError()

    def update_records(self, records) -> None:
        """Store family records, replacing rows with the same id"""
        raise NotImplementedError()

    def insert_report(self, report) -> None:
        """Store a corpus report, one row per check"""
        raise NotImplementedError()


class SQLInterface(DBInterface):
    _type_mapper = {
        'datetime': DateTime,
        'str': Text,
        'int': Integer,
        'bigint': BigInteger,
        'varchar': VARCHAR(255),
        'boolean': Boolean
    }

    def __init__(self, engine: sa.engine.Engine, init: bool = False, db_schema_loc: str = None) -> None:
        """ Record store over a sqlalchemy engine

        :param engine: sqlalchemy engine, SQLite by default
        :param init: if needed to initialize database tables
        :param db_schema_loc: database schema description if you have custom schema
        """
        super().__init__()
        self.engine = engine

        self.meta = sa.MetaData()
        self.meta.reflect(bind=self.engine)
        if init:
            self._create_db_schema_tables(db_schema_loc)

    def _create_db_schema_tables(self, db_schema_loc):
        self._db_parameters = utils.load_param('db_schema.json', db_schema_loc)
        for table_name, table_schema in self._db_parameters.items():
            self.create_table(table_name, table_schema)

    def get_table_names(self) -> List[str]:
        return list(self.meta.tables.keys())

    def get_columns_names(self, table_name: str) -> List[str]:
        table = self.meta.tables[table_name]
        return [str(it.name) for it in table.columns]

    def create_table(self, table_name: str, table_schema: Mapping[str, str]) -> None:
        """
        Create a table

        :param table_name: table name
        :param table_schema: dict{column name: type}
        """
        if table_name in self.meta.tables:
            logging.getLogger(__name__).debug(f'table {table_name} already exists.')
            return
        col_names = list(table_schema.keys())
        col_types = [self._type_mapper[it] for it in table_schema.values()]
        new_table = Table(table_name, self.meta,
                          *(Column(col_name, col_type) for col_name, col_type in zip(col_names, col_types)),
                          sa.PrimaryKeyConstraint('id'))
        new_table.create(bind=self.engine)
        logging.getLogger(__name__).info(f'table {table_name} created.')

    def drop_all_tables(self) -> None:
        logging.getLogger(__name__).debug('DROPPING ALL TABLES')
        self.meta.drop_all(bind=self.engine)
        self.meta.clear()

    def purge_table(self, table_name: str) -> None:
        assert table_name in self.meta.tables.keys(), f'no table named {table_name} in the database'
        table = self.meta.tables[table_name]
        with self.engine.begin() as conn:
            conn.execute(table.delete())
        logging.getLogger(__name__).debug(f'table {table_name} purged')

    def insert_df(self, df: pd.DataFrame, table_name: str) -> None:
        if df.empty:
            return

        start_timestamp = time.time()
        df.to_sql(table_name, self.engine, if_exists='append', index=False)
        end_timestamp = time.time()
        logging.getLogger(__name__).debug(f'inserting {df.shape[0]} rows took {(end_timestamp - start_timestamp):.2f}s.')

    def delete_id_records(self, table_name: str, ids: Union[str, Sequence[str]]) -> None:
        assert table_name in self.meta.tables.keys(), f'no table named {table_name} in the database'
        if isinstance(ids, str):
            ids = [ids]
        table = self.meta.tables[table_name]
        with self.engine.begin() as conn:
            conn.execute(table.delete().where(table.c.id.in_(list(ids))))

    def _replace_rows(self, df: pd.DataFrame, table_name: str) -> None:
        if df.empty:
            return
        self.delete_id_records(table_name, df['id'].tolist())
        self.insert_df(df, table_name)

    def update_records(self, records) -> None:
        from .WireFormat import dumps, format_record

        rows = []
        for it in records:
            wire = format_record(it)
            rows.append({
                'id': wire['id'],
                'family': wire['family'],
                'parameters': dumps(wire['parameters'], pretty=False),
                'd': wire['d'],
                'torsion': wire['certificate']['name'],
                'triple': dumps(wire['triple'], pretty=False),
                'record': dumps(wire, pretty=False),
            })
        self._replace_rows(pd.DataFrame(rows), RECORD_TABLE)
        logging.getLogger(__name__).info(f'{len(rows)} records stored in {RECORD_TABLE}')

    def insert_report(self, report) -> None:
        run_time = dt.datetime.now()
        rows = [{
            'id': f'{entry.id}/{check.name}',
            'entry': entry.id,
            'check_name': check.name,
            'passed': check.passed,
            'detail': check.detail,
            'DateTime': run_time,
        } for entry in report for check in entry.checks]
        self._replace_rows(pd.DataFrame(rows), REPORT_TABLE)
        logging.getLogger(__name__).info(f'{len(rows)} corpus checks stored in {REPORT_TABLE}')

    def read_table(self, table_name: str, columns: Union[str, Sequence[str]] = None,
                   ids: Sequence[str] = None, family: str = None) -> pd.DataFrame:
        """ Read a table of the store

        :param table_name: table name
        :param columns: columns wanted, the primary key is always included
        :param ids: restrict to these ids
        :param family: restrict to one family tag (record table only)
        """
        index_col = self.get_table_primary_keys(table_name)
        t = self.meta.tables[table_name]
        if columns:
            if isinstance(columns, str):
                columns = [columns]
            columns = list(index_col) + [it for it in columns if it not in index_col]
        else:
            columns = [it.name for it in t.columns]
        q = sa.select(*(t.c[it] for it in columns))
        if ids is not None:
            q = q.where(t.c.id.in_(list(ids)))
        if family is not None and 'family' in t.c:
            q = q.where(t.c.family == family)

        with self.engine.connect() as conn:
            ret = pd.read_sql(q, con=conn)
        if 'DateTime' in ret.columns:
            ret.DateTime = pd.to_datetime(ret.DateTime)
        return ret.set_index(index_col, drop=True)

    def exist_table(self, table_name: str) -> bool:
        return table_name in self.meta.tables.keys()

    def get_table_primary_keys(self, table_name: str) -> Optional[List[str]]:
        table = self.meta.tables[table_name]
        return [it.name for it in table.primary_key.columns]
