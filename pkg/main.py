#!/usr/bin/env python3
"""
recur2 - 2차 선형 점화식 정확 산술 도구
수열 생성, 행렬식 항등식 검증, 제약 단어 계수를 위한 CLI 진입점
"""

import sys

from dotenv import load_dotenv

from src.cli import cli, run

# 환경변수 로드 (RECUR2_CAP 등)
load_dotenv()


def main():
    """콘솔 스크립트 진입점"""
    cli(prog_name='recur2')


if __name__ == '__main__':
    sys.exit(run(sys.argv[1:]))
