"""qextremal tests"""
