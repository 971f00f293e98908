from datetime import datetime

from fastapi import APIRouter

from src.api.models import HealthResponse, StatsResponse

router = APIRouter(prefix="/api", tags=["System"])


@router.get("/health", response_model=HealthResponse)
async def health_check():
    """
    Health check endpoint.

    Returns the system status and version information.
    """
    return HealthResponse(
        status="healthy",
        version="1.0.0",
        timestamp=datetime.utcnow()
    )


@router.get("/stats", response_model=StatsResponse)
async def get_stats():
    """
    Get usage statistics.

    Returns how many requests each service has handled since startup.
    """
    from src.api.dependencies import check_service, decomposition_service, generator_service, query_service

    return StatsResponse(
        decompositions=decomposition_service.calls,
        queries=query_service.calls,
        checks=check_service.calls,
        generated=generator_service.calls
    )
