"""Comment dumps, topic/bot/length filters and dataset statistics"""
