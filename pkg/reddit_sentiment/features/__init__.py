"""Tokenization, vocabularies and document vectors"""
