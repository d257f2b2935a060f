"""Distributions generated by a stochastic mixture of the minimum and maximum
of two iid draws, with closed-form families, stochastic-order checkers,
a bivariate/copula extension, and independent numerical oracles."""

from .baselines import Exponential, FunctionDistribution, Laplace, UnivariateDistribution, Uniform, Weibull
from .bivariate import (INDEPENDENCE, LOWER_FRECHET, UPPER_FRECHET, BivariateTransformed, Copula,
                        TransformedCopula, bivariate_cdf, copula_validity, independence_case_cdf,
                        sample_bivariate, transformed_copula_value)
from .core import (MixtureIndicator, ResidualLife, TransformedDistribution, make_rng, median,
                   proportional_odds_cdf, psi, psi_inv, residual_life_survival, residual_mix_parameter,
                   sample, sample_inverse, split_rng, transform_cdf, transform_hazard, transform_pdf,
                   transform_quantile, transform_survival)
from .errors import (DomainError, EmptySample, NonConvergence, OrdmixError, SupportExhausted,
                     UnsupportedCoupling, UnsupportedOrder, WrongCoupling)
from .named import SkewLaplace, TransformedExponential
from .orders import AgingReport, Grid, OrderReport, check_order, classify_aging, preservation_suite

__version__ = "0.1.0"
