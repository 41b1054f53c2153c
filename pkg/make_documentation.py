import os
import shutil
import subprocess

package_path = os.path.dirname(os.path.abspath(__file__))
module_path = os.path.join(package_path, 's_eulerian')
docs_path = os.path.join(package_path, 'docs')
shutil.rmtree(docs_path, ignore_errors=True)
subprocess.run(['pdoc', '--html', '--force', '--output-dir', docs_path,
                module_path], check=True)
pdoc_path = os.path.join(docs_path, 's_eulerian')
for name in os.listdir(pdoc_path):
    shutil.move(os.path.join(pdoc_path, name), docs_path)
os.rmdir(pdoc_path)
