import time

from fastapi import APIRouter, Depends, File, Form, HTTPException, UploadFile

from src.api.models import DecomposeRequest, DecomposeResponse, ErrorResponse
from src.api.routes import http_error
from src.api.services import DecompositionService
from src.pipeline import InstanceKind, TypingMode
from src.strong_tree import StrongTree

router = APIRouter(prefix="/api/decompose", tags=["Decompose"])

ERRORS = {400: {"model": ErrorResponse}, 413: {"model": ErrorResponse}, 422: {"model": ErrorResponse},
          500: {"model": ErrorResponse}}


# Dependency
def get_decomposition_service():
    from src.api.dependencies import decomposition_service
    return decomposition_service


def _response(tree: StrongTree, start_time: float) -> DecomposeResponse:
    return DecomposeResponse(
        n=tree.n,
        strong_sets=sum(1 for _ in tree.nodes()),
        tree=tree.to_dict(),
        outline=tree.outline(),
        processing_time=time.time() - start_time
    )


@router.post("", response_model=DecomposeResponse, responses=ERRORS)
async def decompose_instance(request: DecomposeRequest,
                             decomposition_service: DecompositionService = Depends(get_decomposition_service)):
    """
    Decompose a graph or relation into its strong homogeneous sets.

    - **text**: Edge list or relation JSON
    - **kind**: Structure of a graph input (default: auto)
    - **type_nodes**: off, on or strict (default: on)
    - **k**: Distance bound for kind 'distance'
    """
    try:
        start_time = time.time()
        tree = decomposition_service.decompose(request.text, kind=request.kind, type_nodes=request.type_nodes,
                                               k=request.k)
        return _response(tree, start_time)

    except Exception as e:
        raise http_error(e, "Decomposition")


@router.post("/upload", response_model=DecomposeResponse, responses=ERRORS)
async def decompose_upload(file: UploadFile = File(...),
                           kind: InstanceKind = Form(InstanceKind.AUTO),
                           type_nodes: TypingMode = Form(TypingMode.ON),
                           k: int = Form(2),
                           decomposition_service: DecompositionService = Depends(get_decomposition_service)):
    """
    Decompose an uploaded edge-list or relation JSON file.

    - **file**: Input file
    - **kind**, **type_nodes**, **k**: as for /api/decompose
    """
    content = await file.read()
    if not content.strip():
        raise HTTPException(status_code=400, detail="Uploaded file is empty")

    try:
        start_time = time.time()
        tree = decomposition_service.decompose(content, kind=kind, type_nodes=type_nodes, k=k)
        return _response(tree, start_time)

    except Exception as e:
        raise http_error(e, "Decomposition")
