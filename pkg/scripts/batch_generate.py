import sys

from DioTorsion import FamilyRecord, generate_batch, get_db_interface, records_frame, set_global_config

if __name__ == '__main__':
    set_global_config(sys.argv[1])
    workers = int(sys.argv[2]) if len(sys.argv) > 2 else 1

    results = []
    results += generate_batch('t10', [{'u': u} for u in range(2, 13)], workers=workers)
    results += generate_batch('t10', [{'u': 3, 'm': m} for m in range(2, 4)], workers=workers)
    results += generate_batch('t12', [{'m': m} for m in range(2, 5)], workers=workers)
    results += generate_batch('t12alt', [{'u': -7}, {'u': 7}, {'u': '-1/3'}], workers=workers)
    results += generate_batch('t44', [{'t': t} for t in (2, 3, '4/3', '3/2', '5/2')], workers=workers)

    df = records_frame(results)
    print(df.to_string())

    get_db_interface().update_records([it for it in results if isinstance(it, FamilyRecord)])
