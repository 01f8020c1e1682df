"""Label baselines the classifiers are compared against"""
