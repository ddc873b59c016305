"""Central numerical tolerances.

All residual/oracle gates are absolute and assume unit-norm input unless a
function documents otherwise; invariance gates are relative because random
SL(2,C) factors amplify roundoff with their condition number. Every public
function that uses one of these accepts an override argument.
"""

# |amplitude|^2 sum may deviate from 1 by this much and still count as normalized
NORMALIZATION_ATOL = 1e-12

# Grassmann-Plucker relation residuals and det-rho style oracle agreement
RESIDUAL_ATOL = 1e-12
ORACLE_ATOL = 1e-12

# entrywise agreement between the two independent minor implementations
MINOR_MATCH_ATOL = 1e-14

# relative deviation allowed in local-unitary / special-linear invariance trials
LU_INVARIANCE_RTOL = 1e-10
SL_INVARIANCE_RTOL = 1e-10
# the hyperdeterminant check composes three SL(2,C) factors, hence the looser gate
DET_INVARIANCE_RTOL = 1e-9

# condition-number cap for random SL(2,C) samples; keeps float error below the gates
SL2_CONDITION_CAP = 1e3

# measurement outcomes below this probability are reported with a null post-state
OUTCOME_PROB_FLOOR = 1e-14

# denominator floor for relative deviations (guards 0/0 only)
RELATIVE_FLOOR = 1e-300
