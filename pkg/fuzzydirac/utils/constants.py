# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

# hermiticity / skew-hermiticity / unitarity predicate tolerance (relative to max(1, max|entry|))
TAU_HERM = 1e-10

# default acceptance tolerances
TOL_SPECTRUM = 1e-9
TOL_IDENTITY = 1e-10
TOL_EQUIVARIANCE = 1e-9

# eigenvalue clusters closer than this cannot be assigned to isotypic sectors
ISOTYPIC_GAP_TOLERANCE = 1e-6

# the variance of a sector Rayleigh block above which the Berezin map is not scalar on the sector
SECTOR_VARIANCE_TOLERANCE = 1e-10

# pivot checks of the linking operator
PIVOT_TOLERANCE = 1e-10

# sphere grids and searches
DEFAULT_SPHERE_RESOLUTION = 64
DEFAULT_BRIDGE_RESOLUTION = 24
DEFAULT_DIRECTIONS = 256
DEFAULT_LELL_SAMPLES = 64
DEFAULT_REFINEMENT_STARTS = 5

# the band-limited model of C(S^2) used for the reach on the function side sits this many levels above m
DEFAULT_WORK_LEVEL_OFFSET = 4

# restarts of the nonsmooth ascent per unit of budget
RESTARTS_PER_BUDGET = 3
ASCENT_STEPS = 24

# |lambda| <= LOW_BAND_CUTOFF selects the low band of the tunnel contraction check
LOW_BAND_CUTOFF = 4.0

# numerical noise below which a quantity counts as zero
EPS = 1e-12
