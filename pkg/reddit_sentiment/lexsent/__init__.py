"""Rule-and-lexicon sentiment scorers and consensus labelling"""
