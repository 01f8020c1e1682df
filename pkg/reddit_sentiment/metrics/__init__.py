"""Binary classification metrics"""
