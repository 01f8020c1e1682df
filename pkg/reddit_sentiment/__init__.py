"""Sentiment labelling and classification of Covid-related Reddit comments"""
