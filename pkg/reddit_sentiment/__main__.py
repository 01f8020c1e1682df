import sys

from reddit_sentiment.cli import main

sys.exit(main())
