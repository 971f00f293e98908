import time

from fastapi import APIRouter, Depends

from src.api.models import CheckRequest, CheckResponse, ErrorResponse
from src.api.routes import http_error
from src.api.services import CheckService

router = APIRouter(prefix="/api/check", tags=["Check"])


# Dependency
def get_check_service():
    from src.api.dependencies import check_service
    return check_service


@router.post("", response_model=CheckResponse,
             responses={400: {"model": ErrorResponse}, 413: {"model": ErrorResponse}, 422: {"model": ErrorResponse}})
async def check_instance(request: CheckRequest, check_service: CheckService = Depends(get_check_service)):
    """
    Check axioms, family closure, submodularity or agreement with brute force.

    - **axioms**: Axioms to check ([] for those expected of the input)
    - **closure**: auto, weakly_partitive or partitive
    - **submodular**: auto, exhaustive or sampled
    - **oracle**: Compare with brute force (small inputs only)

    With nothing requested the expected axioms are checked.
    """
    try:
        start_time = time.time()
        axioms = request.axioms
        if axioms is None and request.closure is None and request.submodular is None and not request.oracle:
            axioms = []
        reports = check_service.run(request.text, kind=request.kind, k=request.k, axioms=axioms,
                                    closure=request.closure, submodular=request.submodular, oracle=request.oracle,
                                    samples=request.samples, seed=request.seed)
        return CheckResponse(
            holds=all(report.holds for report in reports),
            reports=reports,
            processing_time=time.time() - start_time
        )

    except Exception as e:
        raise http_error(e, "Check")
