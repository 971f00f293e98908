# Routes package
from fastapi import HTTPException

from src.errors import ComputationError, InputError, TooLarge


def http_error(e: Exception, action: str) -> HTTPException:
    """Map homodec errors onto status codes: 400 input, 413 too large, 422 computation, 500 otherwise."""
    if isinstance(e, InputError):
        return HTTPException(status_code=400, detail=f"{action} failed: {str(e)}")
    if isinstance(e, TooLarge):
        return HTTPException(status_code=413, detail=f"{action} failed: {str(e)}")
    if isinstance(e, ComputationError):
        return HTTPException(status_code=422, detail=f"{action} failed: {type(e).__name__}: {str(e)}")
    return HTTPException(status_code=500, detail=f"{action} failed: {str(e)}")
