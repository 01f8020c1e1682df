"""Blind manual annotation and inter-annotator agreement"""
