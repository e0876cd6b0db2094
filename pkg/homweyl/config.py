"""
Default settings for the verification suites and the deformation checks
"""

import os

# Verification suite parameters
SUITE_DEFAULTS = {
    'degree_bound': int(os.getenv('HOMWEYL_DEGREE_BOUND', '6')),
    'rng_seed': int(os.getenv('HOMWEYL_SEED', '20190514')),
    'trials': int(os.getenv('HOMWEYL_TRIALS', '200')),
    'k_witnesses': os.getenv('HOMWEYL_K_WITNESSES', '0,1,-1,2,1/2'),
    'numerators': os.getenv('HOMWEYL_NUMERATORS', '-3,3'),
    'denominators': os.getenv('HOMWEYL_DENOMINATORS', '1,2'),
    'candidate_cap': int(os.getenv('HOMWEYL_CANDIDATE_CAP', '100000')),
}

# Truncation order for the formal deformation in t
DEFORMATION_ORDER = int(os.getenv('HOMWEYL_ORDER', '10'))

# Largest support of a random test polynomial
RANDOM_SUPPORT_MAX = 6
