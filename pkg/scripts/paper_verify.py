import sys

from DioTorsion import get_db_interface, report_frame, set_global_config, verify_corpus

if __name__ == '__main__':
    set_global_config(sys.argv[1])

    reports = verify_corpus(workers=2)
    df = report_frame(reports)
    print(df.to_string())
    print(df.groupby('id')['pass'].all())

    get_db_interface().insert_report(reports)
