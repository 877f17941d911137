"""
2차 선형 점화식 정확 산술 - 코어 모듈
"""

__version__ = "1.0.0"
__author__ = "recur2"
__description__ = "Exact second-order recurrences, determinant identities and word-model oracles"
