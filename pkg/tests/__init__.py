"""
테스트 모듈 초기화
"""