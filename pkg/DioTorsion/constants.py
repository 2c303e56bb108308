# largest point order a torsion point may have over a quadratic field
TORSION_BOUND = 18

# order reported for points of infinite order
INFINITE_ORDER = 0

# (n1, n2) for Z/n1 x Z/n2, n1 | n2
ADMISSIBLE_GROUPS = [(1, n) for n in range(1, 17)] + [(1, 18)] + \
                    [(2, 2 * m) for m in range(1, 7)] + \
                    [(3, 3), (3, 6), (4, 4)]

# no admissible group has more elements than this
MAX_TORSION_SIZE = 24

FAMILY_TAGS = {
    't10': (2, 10),
    't12': (2, 12),
    't12alt': (2, 12),
    't44': (4, 4),
}

DEFAULT_OPTIONS = {
    'arithmetic': {
        'trial_division_bound': 10 ** 6,
        'rho_iterations': 10 ** 7,
    },
    'torsion': {
        'max_order': TORSION_BOUND,
    },
    'db_interface': {
        'driver': 'sqlite',
        'database': 'diotorsion.db',
    },
}

RECORD_TABLE = 'family_records'
REPORT_TABLE = 'corpus_reports'
