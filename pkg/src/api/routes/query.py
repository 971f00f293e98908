from fastapi import APIRouter, Depends

from src.api.models import (ErrorResponse, InstanceRequest, MhsRequest, MhsResponse, ShsRequest, ShsResponse,
                            TrivialResponse)
from src.api.routes import http_error
from src.api.services import QueryService

router = APIRouter(prefix="/api/query", tags=["Query"])

ERRORS = {400: {"model": ErrorResponse}, 422: {"model": ErrorResponse}, 500: {"model": ErrorResponse}}


# Dependency
def get_query_service():
    from src.api.dependencies import query_service
    return query_service


@router.post("/shs", response_model=ShsResponse, responses=ERRORS)
async def smallest_homogeneous_set(request: ShsRequest, query_service: QueryService = Depends(get_query_service)):
    """
    Smallest homogeneous set containing the given elements.

    - **text**: Edge list or relation JSON
    - **ids**: Elements that must be contained
    """
    try:
        return ShsResponse(members=query_service.shs(request.text, request.ids, kind=request.kind, k=request.k))
    except Exception as e:
        raise http_error(e, "Query")


@router.post("/mhs", response_model=MhsResponse, responses=ERRORS)
async def maximal_homogeneous_sets(request: MhsRequest, query_service: QueryService = Depends(get_query_service)):
    """
    Partition of the other elements into maximal homogeneous sets avoiding x.

    - **text**: Edge list or relation JSON
    - **x**: Element to avoid
    """
    try:
        partition = query_service.mhs(request.text, request.x, kind=request.kind, k=request.k)
        return MhsResponse(x=request.x, partition=partition)
    except Exception as e:
        raise http_error(e, "Query")


@router.post("/trivial", response_model=TrivialResponse, responses=ERRORS)
async def trivial(request: InstanceRequest, query_service: QueryService = Depends(get_query_service)):
    """
    Whether the only homogeneous sets are the whole set and the singletons.

    - **text**: Edge list or relation JSON
    """
    try:
        return TrivialResponse(trivial=query_service.trivial(request.text, kind=request.kind, k=request.k))
    except Exception as e:
        raise http_error(e, "Query")
