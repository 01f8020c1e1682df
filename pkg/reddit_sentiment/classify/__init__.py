"""Naive Bayes, linear SVM and random forest classifiers over sparse document vectors"""
