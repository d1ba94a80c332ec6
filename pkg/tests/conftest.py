import pytest

from ricbound import kernels


@pytest.fixture(params=kernels.available_backends())
def backend(request):
    return request.param
