#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /drowsy_lab/baselines/classifier.py                                                 #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:38:12 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
"""Closed-Form and Convex Classifiers for the Feature Baselines"""
from abc import ABC, abstractmethod
import logging
from typing import Dict, Type

import numpy as np
from scipy import linalg
from scipy.optimize import minimize
from scipy.spatial.distance import cdist
from scipy.special import expit
from scipy.stats import norm

from drowsy_lab.core.exceptions import ClassMissingError, NumericalError, ShapeError

# ------------------------------------------------------------------------------------------------ #
RIDGE = 1e-6
VAR_SMOOTHING = 1e-9
LR_LAMBDA = 1.0
LR_GTOL = 1e-6
LR_MAXITER = 500
KNN_K = 5


# ------------------------------------------------------------------------------------------------ #
#                                   CLASSIFIER BASE CLASS                                          #
# ------------------------------------------------------------------------------------------------ #
class Classifier(ABC):
    """Binary classifier over feature matrices. predict is defined only after fit."""

    kind: str = None

    def __init__(self) -> None:
        self._logger = logging.getLogger(
            f"{self.__module__}.{self.__class__.__name__}",
        )
        self._n_features = None
        self._classes = None

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(fitted={self.is_fitted})"

    @property
    def is_fitted(self) -> bool:
        return self._n_features is not None

    def fit(self, X: np.ndarray, y: np.ndarray):
        X, y = np.asarray(X, dtype=np.float64), np.asarray(y)
        if X.ndim != 2 or len(X) != len(y):
            msg = f"Expected a (samples, features) matrix matching {len(y)} labels, got {X.shape}."
            self._logger.error(msg)
            raise ShapeError(msg)
        self._classes = np.unique(y)
        if len(self._classes) < 2:
            msg = f"{self.kind} needs samples of both classes, got only {self._classes.tolist()}."
            self._logger.error(msg)
            raise ClassMissingError(msg)
        self._fit(X, y)
        self._n_features = X.shape[1]
        return self

    def predict(self, X: np.ndarray) -> np.ndarray:
        if not self.is_fitted:
            msg = f"{self.kind} must be fitted before predicting."
            self._logger.error(msg)
            raise RuntimeError(msg)
        X = np.asarray(X, dtype=np.float64)
        if X.ndim != 2 or X.shape[1] != self._n_features:
            msg = f"Expected {self._n_features} features, got matrix of shape {X.shape}."
            self._logger.error(msg)
            raise ShapeError(msg)
        return self._predict(X)

    @abstractmethod
    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        """Estimates the parameters."""

    @abstractmethod
    def _predict(self, X: np.ndarray) -> np.ndarray:
        """Labels rows of a validated matrix."""

    def _priors(self, y: np.ndarray) -> np.ndarray:
        return np.array([np.mean(y == c) for c in self._classes])

    def _cholesky(self, covariance: np.ndarray) -> tuple:
        try:
            return linalg.cho_factor(covariance, lower=True)
        except linalg.LinAlgError as e:
            msg = f"{self.kind} covariance is singular despite the ridge: {e}"
            self._logger.error(msg)
            raise NumericalError(msg) from e


# ------------------------------------------------------------------------------------------------ #
#                                   GAUSSIAN NAIVE BAYES                                           #
# ------------------------------------------------------------------------------------------------ #
class GaussianNaiveBayes(Classifier):
    """Per-class, per-feature Gaussians with variances floored at 1e-9 x the largest variance."""

    kind = "GNB"

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        largest = float(np.var(X, axis=0).max())
        floor = VAR_SMOOTHING * largest if largest > 0 else VAR_SMOOTHING
        self._means = np.stack([X[y == c].mean(axis=0) for c in self._classes])
        self._vars = np.stack([X[y == c].var(axis=0) for c in self._classes]) + floor
        self._log_priors = np.log(self._priors(y))

    def _predict(self, X: np.ndarray) -> np.ndarray:
        scores = np.stack(
            [
                norm.logpdf(X, loc=self._means[k], scale=np.sqrt(self._vars[k])).sum(axis=1)
                + self._log_priors[k]
                for k in range(len(self._classes))
            ],
            axis=1,
        )
        return self._classes[np.argmax(scores, axis=1)]


# ------------------------------------------------------------------------------------------------ #
#                               LINEAR DISCRIMINANT ANALYSIS                                       #
# ------------------------------------------------------------------------------------------------ #
class LinearDiscriminant(Classifier):
    """Pooled covariance with a 1e-6 diagonal ridge."""

    kind = "LDA"

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._means = np.stack([X[y == c].mean(axis=0) for c in self._classes])
        centered = X - self._means[np.searchsorted(self._classes, y)]
        dof = max(len(X) - len(self._classes), 1)
        covariance = centered.T @ centered / dof + RIDGE * np.eye(X.shape[1])
        factor = self._cholesky(covariance)
        self._coef = linalg.cho_solve(factor, self._means.T).T
        self._intercept = -0.5 * np.sum(self._coef * self._means, axis=1) + np.log(self._priors(y))

    def _predict(self, X: np.ndarray) -> np.ndarray:
        scores = X @ self._coef.T + self._intercept
        return self._classes[np.argmax(scores, axis=1)]


# ------------------------------------------------------------------------------------------------ #
#                              QUADRATIC DISCRIMINANT ANALYSIS                                     #
# ------------------------------------------------------------------------------------------------ #
class QuadraticDiscriminant(Classifier):
    """Per-class covariance with a 1e-6 diagonal ridge."""

    kind = "QDA"

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._means, self._factors, self._log_dets = [], [], []
        for c in self._classes:
            members = X[y == c]
            mean = members.mean(axis=0)
            centered = members - mean
            dof = max(len(members) - 1, 1)
            covariance = centered.T @ centered / dof + RIDGE * np.eye(X.shape[1])
            factor = self._cholesky(covariance)
            self._means.append(mean)
            self._factors.append(factor)
            self._log_dets.append(2.0 * np.sum(np.log(np.diag(factor[0]))))
        self._log_priors = np.log(self._priors(y))

    def _predict(self, X: np.ndarray) -> np.ndarray:
        scores = []
        for mean, factor, log_det, log_prior in zip(
            self._means, self._factors, self._log_dets, self._log_priors
        ):
            centered = X - mean
            mahalanobis = np.sum(centered * linalg.cho_solve(factor, centered.T).T, axis=1)
            scores.append(-0.5 * log_det - 0.5 * mahalanobis + log_prior)
        return self._classes[np.argmax(np.stack(scores, axis=1), axis=1)]


# ------------------------------------------------------------------------------------------------ #
#                                    LOGISTIC REGRESSION                                           #
# ------------------------------------------------------------------------------------------------ #
class LogisticRegression(Classifier):
    """Minimizes 0.5 * lambda * |w|^2 + sum_i log(1 + exp(-s_i (w.x_i + b))) with L-BFGS.

    The intercept is not penalized.
    """

    kind = "LR"

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        signs = np.where(y == self._classes[1], 1.0, -1.0)

        def objective(theta: np.ndarray):
            w, b = theta[:-1], theta[-1]
            margins = signs * (X @ w + b)
            loss = 0.5 * LR_LAMBDA * w @ w + np.sum(np.logaddexp(0.0, -margins))
            weights = -signs * expit(-margins)
            grad = np.append(LR_LAMBDA * w + X.T @ weights, np.sum(weights))
            return loss, grad

        result = minimize(
            objective,
            np.zeros(X.shape[1] + 1),
            jac=True,
            method="L-BFGS-B",
            options={"gtol": LR_GTOL, "maxiter": LR_MAXITER},
        )
        if not np.all(np.isfinite(result.x)):
            msg = f"Logistic regression diverged: {result.message}"
            self._logger.error(msg)
            raise NumericalError(msg)
        if not result.success:
            self._logger.warning(f"Logistic regression stopped early: {result.message}")
        self._coef, self._intercept = result.x[:-1], result.x[-1]

    def _predict(self, X: np.ndarray) -> np.ndarray:
        return np.where(X @ self._coef + self._intercept > 0, self._classes[1], self._classes[0])


# ------------------------------------------------------------------------------------------------ #
#                                   K NEAREST NEIGHBORS                                            #
# ------------------------------------------------------------------------------------------------ #
class NearestNeighbors(Classifier):
    """Euclidean majority vote. Equal distances resolve to the smaller training index and
    tied votes to the class of the nearest neighbour."""

    kind = "KNN"

    def __init__(self, k: int = KNN_K) -> None:
        super().__init__()
        self._k = k

    def _fit(self, X: np.ndarray, y: np.ndarray) -> None:
        self._X, self._y = X.copy(), y.copy()

    def _predict(self, X: np.ndarray) -> np.ndarray:
        k = min(self._k, len(self._X))
        distances = cdist(X, self._X, metric="euclidean")
        nearest = np.argsort(distances, axis=1, kind="stable")[:, :k]
        votes = self._y[nearest]
        labels = np.empty(len(X), dtype=self._y.dtype)
        for row, neighbours in enumerate(votes):
            counts = np.array([np.sum(neighbours == c) for c in self._classes])
            winners = self._classes[counts == counts.max()]
            labels[row] = winners[0] if len(winners) == 1 else neighbours[0]
        return labels


# ------------------------------------------------------------------------------------------------ #
CLASSIFIERS: Dict[str, Type[Classifier]] = {
    "GNB": GaussianNaiveBayes,
    "LDA": LinearDiscriminant,
    "QDA": QuadraticDiscriminant,
    "LR": LogisticRegression,
    "KNN": NearestNeighbors,
}


def fit_classifier(kind: str, features: np.ndarray, labels: np.ndarray, **kwargs) -> Classifier:
    try:
        classifier = CLASSIFIERS[kind.upper()](**kwargs)
    except KeyError:
        msg = f"Unknown classifier {kind!r}; expected one of {list(CLASSIFIERS)}."
        logging.getLogger(__name__).error(msg)
        raise ValueError(msg)
    return classifier.fit(features, labels)


def predict(model: Classifier, features: np.ndarray) -> np.ndarray:
    return model.predict(features)
