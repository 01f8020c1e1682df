"""Cross-validation, grid search and reports"""
