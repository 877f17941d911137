"""
recur2 설치 스크립트
`pip install .` 후 recur2 명령으로 실행
"""

from setuptools import setup

setup(
    name='recur2',
    version='1.0.0',
    description='Exact second-order recurrences, determinant identities and word-model oracles',
    py_modules=['main'],
    packages=['src'],
    python_requires='>=3.8',
    install_requires=[
        'click>=8.0.0,<9.0.0',
        'python-dotenv>=0.19.0,<2.0.0',
        'numpy>=1.21.0,<3.0.0',
    ],
    extras_require={
        'test': [
            'pytest>=6.0.0,<9.0.0',
            'pytest-cov>=2.12.0,<6.0.0',
            'hypothesis>=6.0.0,<7.0.0',
        ],
    },
    entry_points={
        'console_scripts': [
            'recur2=main:main',
        ],
    },
)
