"""Package logger.

Records carry extra "package" field, so handlers shared with an embedding
application can filter them.
"""
import loguru

Log = loguru.logger.bind(package="aoiroute")
