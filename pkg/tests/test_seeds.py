from reddit_sentiment.seeds import derive_seed


def test_derive_seed_is_stable():
    assert derive_seed(0, "cv/all") == derive_seed(0, "cv/all")
    assert 0 <= derive_seed(123, "svm/fold3") < 2**32


def test_derive_seed_separates_consumers():
    seeds = {derive_seed(master, label) for master in range(3) for label in ("cv", "synth", "rf")}
    assert len(seeds) == 9
